public class S092 extends State {
    public void open() {
        send("msg0");
        send("msg1");
        try {
            new S023();
            send("msg5");
            send("msg5");
        } finally {
            if (counter > 0) {
                send("msg7");
                send("msg3");
            } else {
                new S092();
                send("msg2");
            }
            new Helper();
        }
    }

    public void close() {
        new S026();
    }

    public void start() {
        send("msg4");
        switch (event) {
            case EV4:
                send("msg3");
                send("msg2");
                break;
            case EV5:
                switch (event) {
                    case EV2:
                        if (counter > 6) {
                            send("msg6");
                            new S012();
                        } else {
                            log("trace");
                            send("msg3");
                            update();
                        }
                        log("trace");
                        break;
                    case EV5:
                        if (counter > 9) {
                            log("trace");
                            new S050();
                            send("msg3");
                        }
                        new S054();
                        break;
                    case EV1:
                        if (counter > 9) {
                            send("msg3");
                            send("msg7");
                        } else {
                            new S021();
                            new S050();
                        }
                        update();
                        break;
                    default:
                        new S070();
                        try {
                            log("trace");
                            new S066();
                        } catch (IOException e) {
                            send("msg0");
                            new S029();
                            new S059();
                        } catch (IllegalStateException e) {
                            new Helper();
                        }
                        break;
                }
                break;
            case EV2:
                log("trace");
                break;
        }
    }

    public void stop() {
        new S027();
        new S045();
        new Abstract18();
    }

    public void tick() {
        switch (event) {
            case EV2:
                log("trace");
                break;
            case EV4:
                try {
                    send("msg5");
                    switch (event) {
                        case EV3:
                            new S000();
                            log("trace");
                            break;
                    }
                    send("msg6");
                } catch (TimeoutException e) {
                    new S064();
                } catch (IllegalStateException e) {
                    switch (event) {
                        case EV5:
                            new S090();
                            send("msg0");
                            send("msg1");
                            break;
                    }
                }
                break;
            default:
                switch (event) {
                    case EV0:
                        switch (event) {
                            case EV3:
                                new S058();
                                send("msg1");
                                break;
                        }
                        send("msg2");
                        log("trace");
                        break;
                    case EV5:
                        try {
                            new S059();
                            send("msg7");
                            new S026();
                        } catch (IOException e) {
                            send("msg2");
                            new S092();
                        } catch (IllegalStateException e) {
                            send("msg5");
                            update();
                            log("trace");
                        }
                        break;
                    case EV1:
                        switch (event) {
                            case EV1:
                                new S086();
                                break;
                            case EV3:
                                send("msg6");
                                break;
                            case EV5:
                                send("msg3");
                                break;
                        }
                        try {
                            log("trace");
                        } finally {
                            send("msg6");
                            send("msg5");
                            send("msg4");
                        }
                        new S056();
                        break;
                }
                switch (event) {
                    case EV0:
                        new S044();
                        new S040();
                        log("trace");
                        break;
                    default:
                        new S077();
                        switch (event) {
                            case EV3:
                                new Abstract19();
                                send("msg1");
                                send("msg1");
                                break;
                        }
                        break;
                }
                break;
        }
        send("msg0");
        new S081();
    }

    public void reset() {
        if (counter > 0) {
            if (counter > 5) {
                new S084();
                new S068();
                send("msg0");
            }
            new S017();
        }
        switch (event) {
            case EV5:
                log("trace");
                try {
                    if (counter > 0) {
                        send("msg5");
                    } else {
                        new S073();
                    }
                } catch (TimeoutException e) {
                    try {
                        new S023();
                        new S072();
                        send("msg6");
                    } finally {
                        send("msg2");
                        send("msg0");
                        send("msg6");
                    }
                    new S006();
                    new S016();
                } catch (IOException e) {
                    try {
                        new S020();
                    } catch (TimeoutException e) {
                        send("msg6");
                        send("msg5");
                    } catch (IOException e) {
                        new S093();
                        send("msg4");
                    }
                }
                if (counter > 3) {
                    new S056();
                    new S003();
                }
                break;
        }
        switch (event) {
            case EV4:
                if (counter > 7) {
                    new Abstract2();
                }
                break;
            case EV5:
                send("msg4");
                if (counter > 9) {
                    send("msg2");
                    new S061();
                    send("msg0");
                } else {
                    update();
                    send("msg6");
                    send("msg1");
                }
                new S008();
                break;
            default:
                send("msg2");
                switch (event) {
                    case EV0:
                        new Helper();
                        break;
                    case EV3:
                        send("msg4");
                        update();
                        new S023();
                        break;
                    case EV4:
                        log("trace");
                        if (counter > 3) {
                            send("msg0");
                            new S085();
                            send("msg7");
                        } else {
                            new S012();
                            new S098();
                        }
                        switch (event) {
                            case EV4:
                                new Abstract14();
                                break;
                            case EV0:
                                new S077();
                                send("msg3");
                                break;
                            case EV2:
                                new S038();
                                break;
                        }
                        break;
                }
                break;
        }
    }

    public void pause() {
        new Abstract16();
        send("msg2");
    }

    public void resume() {
        new S001();
        switch (event) {
            case EV3:
                new S033();
                update();
                break;
            case EV1:
                send("msg1");
                break;
            case EV4:
                switch (event) {
                    case EV2:
                        switch (event) {
                            case EV1:
                                send("msg5");
                                update();
                                break;
                            case EV4:
                                new S027();
                                break;
                            default:
                                send("msg5");
                                log("trace");
                                break;
                        }
                        break;
                    case EV0:
                        switch (event) {
                            case EV5:
                                new S007();
                                break;
                        }
                        break;
                }
                switch (event) {
                    case EV3:
                        send("msg6");
                        break;
                }
                break;
            default:
                send("msg2");
                break;
        }
    }

    public void load() {
        try {
            update();
            send("msg7");
        } finally {
            switch (event) {
                case EV2:
                    new S016();
                    try {
                        new S013();
                    } finally {
                        new S089();
                        new S067();
                    }
                    break;
            }
        }
        switch (event) {
            case EV4:
                new S046();
                switch (event) {
                    case EV0:
                        new S068();
                        break;
                    case EV2:
                        update();
                        if (counter > 4) {
                            new Abstract21();
                            send("msg7");
                            send("msg1");
                        } else {
                            send("msg1");
                            send("msg4");
                        }
                        break;
                }
                switch (event) {
                    case EV0:
                        try {
                            send("msg0");
                            new S016();
                            update();
                        } catch (IOException e) {
                            new S060();
                        }
                        if (counter > 8) {
                            new S008();
                            send("msg4");
                        }
                        new S013();
                        break;
                }
                break;
            case EV5:
                new S057();
                break;
            default:
                if (counter > 9) {
                    send("msg5");
                } else {
                    send("msg6");
                }
                if (counter > 2) {
                    update();
                    send("msg0");
                    send("msg3");
                }
                break;
        }
        new S011();
    }

    public void save() {
        new S073();
    }
}
