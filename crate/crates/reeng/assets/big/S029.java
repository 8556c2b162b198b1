public class S029 extends State {
    public void open() {
        if (counter > 8) {
            try {
                send("msg4");
                new S089();
                update();
            } catch (IllegalStateException e) {
                new S082();
                log("trace");
            } catch (TimeoutException e) {
                try {
                    new Abstract9();
                    send("msg3");
                    send("msg2");
                } finally {
                    new S065();
                }
            } finally {
                switch (event) {
                    case EV5:
                        new S087();
                        break;
                    case EV2:
                        send("msg0");
                        send("msg5");
                        new S084();
                        break;
                }
                if (counter > 4) {
                    send("msg0");
                    send("msg1");
                    send("msg3");
                } else {
                    new S033();
                }
                update();
            }
            update();
            send("msg5");
        }
        new Abstract3();
        switch (event) {
            case EV0:
                if (counter > 1) {
                    send("msg6");
                    send("msg6");
                } else {
                    send("msg1");
                    send("msg0");
                }
                break;
        }
    }

    public void close() {
        log("trace");
    }

    public void start() {
        send("msg3");
        if (counter > 9) {
            send("msg2");
            new S099();
        } else {
            update();
        }
        new S021();
    }

    public void stop() {
        send("msg6");
        if (counter > 8) {
            send("msg1");
            switch (event) {
                case EV1:
                    new S000();
                    break;
                case EV0:
                    send("msg5");
                    break;
            }
            send("msg5");
        }
    }

    public void tick() {
        switch (event) {
            case EV3:
                log("trace");
                send("msg5");
                try {
                    new Helper();
                    send("msg6");
                    new S006();
                } catch (IllegalStateException e) {
                    new S003();
                    switch (event) {
                        case EV2:
                            new S025();
                            log("trace");
                            new S030();
                            break;
                    }
                } catch (TimeoutException e) {
                    if (counter > 3) {
                        new S098();
                        send("msg6");
                        new S013();
                    } else {
                        update();
                        new S053();
                    }
                } finally {
                    new S002();
                    update();
                    switch (event) {
                        case EV4:
                            new S012();
                            break;
                        case EV0:
                            send("msg5");
                            new S008();
                            send("msg7");
                            break;
                    }
                }
                break;
            case EV2:
                switch (event) {
                    case EV3:
                        new S011();
                        send("msg6");
                        new S050();
                        break;
                    case EV1:
                        send("msg2");
                        break;
                    case EV0:
                        new S034();
                        update();
                        break;
                }
                break;
        }
        switch (event) {
            case EV0:
                switch (event) {
                    case EV3:
                        new S059();
                        switch (event) {
                            case EV1:
                                new S047();
                                new S001();
                                send("msg6");
                                break;
                            case EV3:
                                send("msg6");
                                log("trace");
                                break;
                            case EV2:
                                send("msg0");
                                new S025();
                                break;
                        }
                        new S078();
                        break;
                }
                break;
            case EV4:
                switch (event) {
                    case EV2:
                        new S089();
                        break;
                    default:
                        new Abstract19();
                        update();
                        break;
                }
                break;
            case EV2:
                log("trace");
                new Helper();
                break;
        }
        new S000();
    }

    public void reset() {
        switch (event) {
            case EV4:
                new S064();
                send("msg5");
                try {
                    send("msg5");
                    switch (event) {
                        case EV2:
                            new Abstract6();
                            break;
                        case EV5:
                            send("msg5");
                            update();
                            break;
                    }
                    send("msg6");
                } finally {
                    update();
                }
                break;
        }
    }

    public void pause() {
        new S027();
        send("msg7");
        if (counter > 6) {
            switch (event) {
                case EV0:
                    if (counter > 1) {
                        new S041();
                        log("trace");
                    } else {
                        send("msg7");
                    }
                    break;
                case EV4:
                    send("msg0");
                    if (counter > 1) {
                        new S071();
                        new S082();
                        new S038();
                    }
                    break;
                default:
                    send("msg2");
                    send("msg1");
                    new S055();
                    break;
            }
            try {
                update();
                try {
                    update();
                } catch (TimeoutException e) {
                    update();
                } finally {
                    new S076();
                    new S015();
                    send("msg4");
                }
            } catch (IllegalStateException e) {
                if (counter > 6) {
                    new S009();
                    update();
                    send("msg5");
                } else {
                    send("msg7");
                }
                new S092();
                switch (event) {
                    case EV4:
                        send("msg5");
                        break;
                    default:
                        new S087();
                        send("msg6");
                        break;
                }
            } finally {
                switch (event) {
                    case EV4:
                        new S007();
                        send("msg5");
                        break;
                    case EV5:
                        update();
                        break;
                    default:
                        log("trace");
                        update();
                        break;
                }
                new Abstract7();
                send("msg4");
            }
            if (counter > 3) {
                if (counter > 0) {
                    update();
                    send("msg2");
                    new Abstract4();
                } else {
                    send("msg1");
                }
                send("msg0");
                send("msg6");
            } else {
                new S015();
            }
        } else {
            if (counter > 2) {
                if (counter > 9) {
                    new S073();
                    send("msg0");
                    send("msg1");
                }
                new S094();
                update();
            }
            update();
        }
    }

    public void resume() {
        if (counter > 8) {
            switch (event) {
                case EV0:
                    send("msg2");
                    new S091();
                    break;
                case EV2:
                    if (counter > 6) {
                        new S010();
                    }
                    new S098();
                    new Abstract6();
                    break;
            }
            if (counter > 9) {
                log("trace");
            }
            update();
        } else {
            try {
                new S083();
                switch (event) {
                    case EV3:
                        log("trace");
                        new S050();
                        new S005();
                        break;
                }
            } finally {
                new S093();
                log("trace");
                send("msg4");
            }
            new S008();
        }
    }

    public void load() {
        try {
            new S073();
            send("msg4");
            switch (event) {
                case EV3:
                    update();
                    new Abstract7();
                    break;
                case EV1:
                    send("msg4");
                    break;
                case EV5:
                    new S022();
                    break;
            }
        } finally {
            if (counter > 4) {
                send("msg5");
                send("msg0");
            } else {
                send("msg4");
                try {
                    new S061();
                    new S031();
                    new S095();
                } finally {
                    send("msg2");
                }
                if (counter > 2) {
                    new S025();
                    new S025();
                    new S023();
                }
            }
        }
        switch (event) {
            case EV1:
                new S015();
                break;
            case EV2:
                log("trace");
                send("msg2");
                switch (event) {
                    case EV5:
                        try {
                            update();
                            log("trace");
                            send("msg3");
                        } finally {
                            send("msg0");
                            new S054();
                        }
                        if (counter > 0) {
                            log("trace");
                            new Abstract9();
                        } else {
                            send("msg3");
                            new S040();
                            new S021();
                        }
                        break;
                    case EV2:
                        new S087();
                        if (counter > 9) {
                            send("msg7");
                            new S036();
                            update();
                        }
                        if (counter > 7) {
                            new S096();
                        }
                        break;
                    case EV1:
                        send("msg3");
                        send("msg7");
                        break;
                }
                break;
            case EV0:
                update();
                break;
        }
        new S051();
    }

    public void save() {
        update();
        try {
            switch (event) {
                case EV3:
                    send("msg5");
                    new S024();
                    break;
                case EV4:
                    send("msg7");
                    break;
                case EV1:
                    if (counter > 5) {
                        send("msg3");
                        new Abstract11();
                        send("msg5");
                    } else {
                        new S043();
                        update();
                    }
                    send("msg5");
                    new S020();
                    break;
                default:
                    update();
                    send("msg2");
                    break;
            }
            try {
                try {
                    new S089();
                } finally {
                    log("trace");
                    send("msg4");
                }
                send("msg2");
            } finally {
                send("msg5");
                new S055();
            }
            send("msg0");
        } catch (TimeoutException e) {
            if (counter > 5) {
                update();
            } else {
                switch (event) {
                    case EV2:
                        log("trace");
                        break;
                }
                send("msg7");
                if (counter > 8) {
                    log("trace");
                    log("trace");
                } else {
                    log("trace");
                }
            }
            try {
                new S086();
                switch (event) {
                    case EV3:
                        log("trace");
                        send("msg5");
                        break;
                    case EV4:
                        new S091();
                        break;
                }
                try {
                    update();
                } catch (TimeoutException e) {
                    send("msg0");
                    new S093();
                }
            } catch (IOException e) {
                try {
                    new S067();
                    new S010();
                } catch (IOException e) {
                    update();
                    new S082();
                    new S023();
                } catch (IllegalStateException e) {
                    send("msg7");
                    send("msg3");
                    new Abstract12();
                } finally {
                    new S035();
                }
                send("msg4");
                new S079();
            } catch (IllegalStateException e) {
                switch (event) {
                    case EV1:
                        update();
                        update();
                        new S087();
                        break;
                    case EV5:
                        send("msg2");
                        break;
                    case EV0:
                        update();
                        break;
                }
            }
            send("msg6");
        } catch (IOException e) {
            new S028();
        }
    }
}
