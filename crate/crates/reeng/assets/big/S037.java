public class S037 extends Abstract7 {
    public void open() {
        send("msg7");
        new S022();
    }

    public void close() {
        try {
            try {
                send("msg3");
                new S047();
            } catch (IllegalStateException e) {
                new Abstract13();
                switch (event) {
                    case EV2:
                        send("msg0");
                        break;
                    case EV4:
                        new S060();
                        new Abstract23();
                        send("msg6");
                        break;
                    case EV5:
                        new S089();
                        break;
                    default:
                        send("msg6");
                        break;
                }
            } catch (TimeoutException e) {
                switch (event) {
                    case EV3:
                        send("msg1");
                        break;
                }
            }
        } catch (IllegalStateException e) {
            send("msg2");
            send("msg3");
        } catch (IOException e) {
            try {
                switch (event) {
                    case EV0:
                        send("msg3");
                        new S023();
                        send("msg4");
                        break;
                }
            } catch (IllegalStateException e) {
                log("trace");
                if (counter > 4) {
                    send("msg6");
                }
                update();
            }
            update();
            send("msg2");
        } finally {
            switch (event) {
                case EV1:
                    new S043();
                    new S076();
                    switch (event) {
                        case EV2:
                            new S043();
                            log("trace");
                            send("msg6");
                            break;
                    }
                    break;
                case EV5:
                    send("msg2");
                    break;
                case EV4:
                    new S053();
                    try {
                        update();
                        new S047();
                        send("msg6");
                    } finally {
                        new S058();
                        send("msg6");
                        send("msg2");
                    }
                    if (counter > 1) {
                        new S079();
                        send("msg3");
                        send("msg7");
                    }
                    break;
            }
            switch (event) {
                case EV3:
                    update();
                    new S066();
                    new S018();
                    break;
                case EV4:
                    update();
                    break;
            }
            if (counter > 2) {
                try {
                    log("trace");
                } catch (TimeoutException e) {
                    new S025();
                } catch (IllegalStateException e) {
                    new S052();
                }
            } else {
                switch (event) {
                    case EV3:
                        new S046();
                        break;
                    case EV4:
                        new S043();
                        break;
                    case EV2:
                        send("msg6");
                        new S061();
                        send("msg5");
                        break;
                    default:
                        send("msg2");
                        break;
                }
                try {
                    send("msg6");
                } finally {
                    update();
                    new S069();
                }
                if (counter > 8) {
                    send("msg5");
                    new S029();
                    log("trace");
                }
            }
        }
    }

    public void start() {
        new S050();
        send("msg5");
        switch (event) {
            case EV3:
                if (counter > 7) {
                    try {
                        send("msg4");
                    } catch (TimeoutException e) {
                        new S042();
                        new Abstract6();
                        new S034();
                    } catch (IllegalStateException e) {
                        new S036();
                        new S038();
                    } finally {
                        log("trace");
                        send("msg0");
                        new S080();
                    }
                    update();
                }
                break;
            case EV2:
                send("msg2");
                try {
                    new S030();
                    switch (event) {
                        case EV1:
                            log("trace");
                            break;
                        case EV3:
                            new S001();
                            send("msg0");
                            break;
                    }
                } finally {
                    send("msg2");
                    try {
                        new S088();
                        new Abstract1();
                        new S082();
                    } catch (IllegalStateException e) {
                        send("msg7");
                    } catch (IOException e) {
                        new S030();
                        new S074();
                        new S054();
                    }
                    send("msg2");
                }
                break;
            case EV0:
                send("msg5");
                send("msg1");
                send("msg3");
                break;
        }
    }

    public void stop() {
        log("trace");
        try {
            new S001();
            switch (event) {
                case EV1:
                    send("msg3");
                    if (counter > 8) {
                        new S072();
                    } else {
                        new S063();
                    }
                    if (counter > 9) {
                        log("trace");
                        log("trace");
                        new S039();
                    }
                    break;
            }
        } finally {
            update();
        }
        send("msg0");
    }

    public void tick() {
        try {
            new S051();
        } catch (IOException e) {
            update();
            switch (event) {
                case EV1:
                    new S093();
                    new S039();
                    try {
                        send("msg1");
                    } catch (TimeoutException e) {
                        send("msg7");
                        send("msg6");
                    } catch (IOException e) {
                        send("msg7");
                        new S089();
                    }
                    break;
                case EV3:
                    send("msg1");
                    break;
            }
        } catch (TimeoutException e) {
            try {
                if (counter > 0) {
                    new S061();
                }
            } finally {
                new S037();
                new S036();
                if (counter > 2) {
                    new S060();
                    send("msg7");
                    new S095();
                }
            }
            try {
                send("msg3");
                new S029();
                try {
                    send("msg1");
                    new S058();
                    new S060();
                } finally {
                    new S010();
                    send("msg0");
                }
            } catch (TimeoutException e) {
                switch (event) {
                    case EV2:
                        send("msg4");
                        break;
                    case EV3:
                        send("msg2");
                        log("trace");
                        new S007();
                        break;
                }
            } catch (IOException e) {
                log("trace");
                send("msg0");
                send("msg5");
            }
        } finally {
            switch (event) {
                case EV3:
                    new S041();
                    update();
                    send("msg6");
                    break;
                case EV4:
                    send("msg2");
                    switch (event) {
                        case EV5:
                            send("msg1");
                            break;
                        case EV2:
                            update();
                            break;
                        default:
                            new S003();
                            send("msg0");
                            send("msg0");
                            break;
                    }
                    new S051();
                    break;
                default:
                    new S087();
                    try {
                        send("msg1");
                        new S033();
                    } finally {
                        new S054();
                    }
                    break;
            }
        }
        send("msg6");
        update();
    }

    public void reset() {
        send("msg0");
        update();
        try {
            send("msg7");
            try {
                new S020();
            } finally {
                switch (event) {
                    case EV0:
                        new S008();
                        send("msg6");
                        break;
                    case EV5:
                        new Abstract1();
                        break;
                }
                if (counter > 0) {
                    new S094();
                    send("msg2");
                } else {
                    log("trace");
                }
            }
            switch (event) {
                case EV3:
                    log("trace");
                    new Abstract1();
                    send("msg5");
                    break;
            }
        } catch (IllegalStateException e) {
            send("msg1");
            switch (event) {
                case EV3:
                    if (counter > 5) {
                        new S046();
                    } else {
                        send("msg0");
                        new S010();
                        send("msg0");
                    }
                    new S091();
                    if (counter > 6) {
                        log("trace");
                        new S065();
                    }
                    break;
            }
        } catch (IOException e) {
            new Abstract19();
            if (counter > 5) {
                send("msg2");
                new S024();
                send("msg7");
            } else {
                new S001();
                log("trace");
            }
            if (counter > 1) {
                new S033();
                switch (event) {
                    case EV5:
                        new S012();
                        break;
                }
            }
        }
    }

    public void pause() {
        send("msg0");
        update();
        log("trace");
    }

    public void resume() {
        switch (event) {
            case EV4:
                new S027();
                if (counter > 4) {
                    new S075();
                } else {
                    if (counter > 7) {
                        send("msg3");
                        log("trace");
                        send("msg0");
                    }
                    switch (event) {
                        case EV5:
                            send("msg0");
                            new S084();
                            break;
                        case EV1:
                            send("msg5");
                            send("msg1");
                            break;
                        default:
                            new S058();
                            new S097();
                            break;
                    }
                }
                break;
        }
        send("msg1");
        send("msg0");
    }

    public void load() {
        update();
    }

    public void save() {
        log("trace");
        new S080();
        new S058();
    }
}
