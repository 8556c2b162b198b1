public class S042 extends State {
    public void open() {
        new Abstract0();
        new S028();
    }

    public void close() {
        try {
            try {
                update();
            } finally {
                send("msg3");
            }
            send("msg6");
            try {
                new S042();
                if (counter > 3) {
                    send("msg0");
                    new S027();
                    send("msg5");
                } else {
                    send("msg6");
                }
                update();
            } catch (IOException e) {
                send("msg2");
                send("msg1");
            }
        } catch (IllegalStateException e) {
            send("msg7");
            new S069();
            try {
                send("msg2");
                new S055();
                if (counter > 5) {
                    send("msg3");
                } else {
                    new S087();
                    new S068();
                    send("msg4");
                }
            } catch (IOException e) {
                try {
                    log("trace");
                } catch (TimeoutException e) {
                    send("msg3");
                } catch (IOException e) {
                    send("msg4");
                }
                new S017();
                if (counter > 7) {
                    update();
                    update();
                    send("msg2");
                } else {
                    send("msg5");
                    send("msg4");
                    update();
                }
            } catch (IllegalStateException e) {
                new S034();
                if (counter > 3) {
                    new S062();
                    new Abstract19();
                } else {
                    log("trace");
                }
                new S051();
            } finally {
                new S019();
            }
        } catch (IOException e) {
            new Abstract8();
            if (counter > 0) {
                send("msg6");
            }
        } finally {
            switch (event) {
                case EV3:
                    new S011();
                    send("msg0");
                    break;
                case EV0:
                    try {
                        send("msg3");
                        send("msg5");
                    } catch (IOException e) {
                        log("trace");
                        update();
                    } catch (IllegalStateException e) {
                        new S013();
                        new S029();
                        log("trace");
                    } finally {
                        update();
                        send("msg4");
                    }
                    if (counter > 9) {
                        send("msg0");
                    } else {
                        send("msg0");
                        new S087();
                        new S023();
                    }
                    switch (event) {
                        case EV0:
                            send("msg0");
                            break;
                        case EV3:
                            send("msg4");
                            new S030();
                            new S002();
                            break;
                        case EV1:
                            update();
                            log("trace");
                            break;
                        default:
                            update();
                            new S066();
                            update();
                            break;
                    }
                    break;
                case EV5:
                    switch (event) {
                        case EV2:
                            new S031();
                            new S070();
                            break;
                        case EV1:
                            send("msg5");
                            break;
                        case EV4:
                            log("trace");
                            send("msg7");
                            break;
                    }
                    break;
            }
            send("msg1");
            switch (event) {
                case EV4:
                    switch (event) {
                        case EV0:
                            new S063();
                            break;
                        case EV3:
                            new S033();
                            new Abstract22();
                            break;
                        case EV4:
                            send("msg3");
                            break;
                        default:
                            update();
                            new S086();
                            send("msg4");
                            break;
                    }
                    break;
                case EV2:
                    new S072();
                    if (counter > 9) {
                        new S011();
                        send("msg3");
                        send("msg5");
                    }
                    break;
            }
        }
        if (counter > 1) {
            if (counter > 2) {
                if (counter > 7) {
                    new S095();
                    send("msg7");
                } else {
                    send("msg6");
                }
                log("trace");
            }
        }
        new S068();
    }

    public void start() {
        if (counter > 9) {
            new S093();
            log("trace");
        }
        new S010();
    }

    public void stop() {
        if (counter > 8) {
            if (counter > 6) {
                if (counter > 9) {
                    new S050();
                    new S028();
                    new S079();
                }
            } else {
                if (counter > 0) {
                    send("msg6");
                    send("msg0");
                    log("trace");
                } else {
                    new S066();
                }
                send("msg1");
                try {
                    update();
                    send("msg5");
                } catch (IOException e) {
                    new S026();
                } finally {
                    send("msg4");
                    new S013();
                    new S078();
                }
            }
        } else {
            if (counter > 4) {
                send("msg1");
                new S086();
                if (counter > 2) {
                    new S024();
                    send("msg3");
                } else {
                    send("msg2");
                    new S054();
                    update();
                }
            }
        }
    }

    public void tick() {
        switch (event) {
            case EV0:
                log("trace");
                break;
            case EV1:
                send("msg4");
                send("msg2");
                new S012();
                break;
        }
        switch (event) {
            case EV5:
                update();
                send("msg7");
                try {
                    send("msg3");
                    try {
                        log("trace");
                    } catch (IOException e) {
                        new S050();
                        send("msg3");
                        new S069();
                    }
                    new Abstract3();
                } catch (IllegalStateException e) {
                    switch (event) {
                        case EV2:
                            update();
                            new S089();
                            break;
                    }
                } finally {
                    try {
                        new S079();
                        new S007();
                    } finally {
                        send("msg6");
                        new S024();
                    }
                    try {
                        send("msg5");
                        new S093();
                        new S029();
                    } catch (TimeoutException e) {
                        new Abstract7();
                        new S063();
                    } catch (IllegalStateException e) {
                        send("msg4");
                        new S071();
                    } finally {
                        new S018();
                    }
                }
                break;
            case EV4:
                send("msg3");
                new S071();
                break;
        }
    }

    public void reset() {
        update();
        new S070();
        send("msg4");
    }

    public void pause() {
        try {
            try {
                try {
                    send("msg6");
                } catch (IOException e) {
                    send("msg5");
                    send("msg2");
                } catch (TimeoutException e) {
                    send("msg7");
                }
                new S082();
                if (counter > 1) {
                    update();
                    new S087();
                }
            } catch (IllegalStateException e) {
                new S055();
            } catch (TimeoutException e) {
                try {
                    send("msg4");
                    send("msg1");
                } catch (IOException e) {
                    new S011();
                    new S086();
                    send("msg5");
                } finally {
                    new S037();
                    new S085();
                }
                new S058();
                new S089();
            }
            new S022();
        } catch (IllegalStateException e) {
            if (counter > 4) {
                new S080();
            }
            new Abstract3();
        }
        new S076();
        new S076();
    }

    public void resume() {
        try {
            try {
                if (counter > 8) {
                    send("msg4");
                } else {
                    update();
                    update();
                }
                new S019();
            } catch (IllegalStateException e) {
                send("msg4");
                if (counter > 9) {
                    send("msg3");
                }
            } finally {
                new S095();
                send("msg6");
            }
        } catch (IOException e) {
            new S040();
            new S082();
            if (counter > 8) {
                new Abstract8();
            }
        } finally {
            send("msg0");
            try {
                if (counter > 4) {
                    log("trace");
                } else {
                    send("msg7");
                }
                try {
                    new Abstract1();
                } catch (IllegalStateException e) {
                    update();
                } catch (TimeoutException e) {
                    new Abstract8();
                    new S026();
                }
                send("msg5");
            } catch (IOException e) {
                new S089();
            } catch (IllegalStateException e) {
                log("trace");
            } finally {
                if (counter > 5) {
                    send("msg5");
                    new S019();
                }
            }
            log("trace");
        }
        send("msg7");
        send("msg3");
    }

    public void load() {
        new S064();
    }

    public void save() {
        update();
        new S002();
        if (counter > 3) {
            try {
                try {
                    new S047();
                    update();
                    send("msg3");
                } catch (IOException e) {
                    send("msg2");
                    new S095();
                    new S061();
                } finally {
                    log("trace");
                    send("msg4");
                }
                new S073();
            } catch (TimeoutException e) {
                send("msg2");
            }
        } else {
            if (counter > 6) {
                new Abstract15();
                new S065();
            } else {
                if (counter > 8) {
                    send("msg7");
                    send("msg5");
                } else {
                    send("msg5");
                    log("trace");
                    new S094();
                }
                new S082();
            }
            new S026();
            new S026();
        }
    }
}
